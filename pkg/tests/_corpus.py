"""The frozen fuzz corpus of small finite point sets.

`fixtures/fuzz_corpus.json` was produced once by `generate()` and is
checked in, so the tests do not depend on the random module's stream.
"""
import json
import random
from fractions import Fraction
from pathlib import Path

CORPUS_PATH = Path(__file__).parent / "fixtures" / "fuzz_corpus.json"


def in_bounds(points):
    """Every coordinate has numerator and denominator at most 20 in size."""
    return all(abs(x.numerator) <= 20 and x.denominator <= 20 for p in points for x in p)


def _rational(rng):
    return Fraction(rng.randint(-20, 20), rng.randint(1, 20))


def generate(seed=20261019, count=60):
    rng = random.Random(seed)
    corpus = []
    for i in range(count):
        dim = 2 if i % 3 else 3
        size = rng.randint(2, 12 if dim == 2 else 10)
        pts = set()
        while len(pts) < size:
            if pts and rng.random() < 0.15:
                # a point on a line through two others keeps degenerate cases around
                a, b = rng.sample(sorted(pts), 2) if len(pts) > 1 else (next(iter(pts)),) * 2
                t = Fraction(rng.randint(-3, 4), 2)
                q = tuple(x + t * (y - x) for x, y in zip(a, b))
                if all(abs(x.numerator) <= 20 and x.denominator <= 20 for x in q):
                    pts.add(q)
            else:
                pts.add(tuple(_rational(rng) for _ in range(dim)))
        corpus.append({"dimension": dim, "points": [[str(x) for x in p] for p in sorted(pts)]})
    return corpus


def load():
    """List of ``(dim, points)`` with Fraction coordinates."""
    doc = json.loads(CORPUS_PATH.read_text())
    return [(c["dimension"], [tuple(Fraction(x) for x in p) for p in c["points"]]) for c in doc]


if __name__ == "__main__":
    CORPUS_PATH.write_text(json.dumps(generate(), indent=1) + "\n")
