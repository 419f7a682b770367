import itertools
import random

import pytest

from circsquares.words import Word

ACCEPTANCE_LINES: list[str] = []


def words_upto(n_max, sigma, n_min=1):
    letters = "abcd"[:sigma]
    for n in range(n_min, n_max + 1):
        for t in itertools.product(letters, repeat=n):
            yield "".join(t)


def random_texts(count, max_len, seed, sigmas=(2, 3, 4), min_len=1):
    rng = random.Random(seed)
    for _ in range(count):
        sigma = rng.choice(sigmas)
        n = rng.randint(min_len, max_len)
        yield "".join(rng.choice("abcd"[:sigma]) for _ in range(n))


@pytest.fixture
def W():
    return lambda text: Word(text, max(2, max((ord(c) - 96 for c in text), default=1)))


@pytest.fixture
def acceptance():
    def record(number, title, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
        if detail:
            line += f" ({detail})"
        ACCEPTANCE_LINES.append(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
