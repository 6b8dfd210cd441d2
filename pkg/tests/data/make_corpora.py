"""Regenerate the fixture corpora in this directory (deterministic)."""

import random
from pathlib import Path

HERE = Path(__file__).parent


def dna(rng, size):
    # random seed sequence plus mutated copies of earlier segments
    out = bytearray(rng.choice(b"ACGT") for _ in range(4096))
    while len(out) < size:
        start = rng.randrange(len(out) - 512)
        seg = bytearray(out[start:start + rng.randrange(64, 512)])
        for _ in range(len(seg) // 50):
            seg[rng.randrange(len(seg))] = rng.choice(b"ACGT")
        out += seg
    return bytes(out[:size])


def english(rng, size):
    words = ["".join(rng.choice("etaoinshrdlucmfwyp") for _ in range(rng.randrange(1, 10))) for _ in range(3000)]
    weights = [1 / (k + 1) for k in range(len(words))]
    out = []
    n = 0
    while n < size:
        sentence = " ".join(rng.choices(words, weights, k=rng.randrange(4, 20))).capitalize() + ". "
        out.append(sentence)
        n += len(sentence)
    return "".join(out).encode()[:size]


def xml(rng, size):
    tags = ["author", "title", "year", "journal", "pages", "volume"]
    out = ["<?xml version=\"1.0\"?>\n<dblp>\n"]
    n = 0
    k = 0
    while n < size:
        fields = "".join(f"  <{t}>{rng.randrange(10**rng.randrange(1, 6))}</{t}>\n" for t in rng.sample(tags, 4))
        rec = f"<article key=\"journals/x/{k}\">\n{fields}</article>\n"
        out.append(rec)
        n += len(rec)
        k += 1
    return "".join(out).encode()[:size]


def proteins(rng, size):
    alphabet = b"ACDEFGHIKLMNPQRSTVWY"
    out = bytearray()
    family = [bytes(rng.choice(alphabet) for _ in range(rng.randrange(100, 400))) for _ in range(40)]
    while len(out) < size:
        seq = bytearray(rng.choice(family))
        for _ in range(len(seq) // 10):
            seq[rng.randrange(len(seq))] = rng.choice(alphabet)
        out += seq + b"\n"
    return bytes(out[:size])


def versions(rng, size):
    # near-duplicate revisions of one document
    doc = bytearray(english(rng, 20000))
    out = bytearray()
    while len(out) < size:
        for _ in range(5):
            p = rng.randrange(len(doc))
            doc[p:p + rng.randrange(0, 20)] = english(rng, rng.randrange(1, 30))
        out += doc
    return bytes(out[:size])


def binary(rng, size):
    block = bytes(range(256))
    out = bytearray()
    while len(out) < size:
        if rng.random() < 0.5:
            out += block[rng.randrange(256):]
        else:
            out += bytes(rng.randrange(256) for _ in range(rng.randrange(1, 64)))
    return bytes(out[:size])


CORPORA = {
    "dna.txt": (dna, 400_000),
    "english.txt": (english, 400_000),
    "dblp.xml": (xml, 400_000),
    "proteins.txt": (proteins, 400_000),
    "versions.txt": (versions, 600_000),
    "binary.bin": (binary, 200_000),
}


def main():
    for name, (gen, size) in CORPORA.items():
        (HERE / name).write_bytes(gen(random.Random(name), size))


if __name__ == "__main__":
    main()
