import random

import pytest

from kollokator import builtin_lexicon_path, load_verb_lexicon, tokenize

# Published score-table rows for nouns left of "kommen":
# (noun, f_xy, f_y, printed MI, printed t, is_collocation)
KOMMEN_TABLE = [
    ("Geltung", 27, 96, 9.86, 5.19, True),
    ("Betracht", 9, 42, 9.47, 2.99, True),
    ("Berührung", 4, 41, 8.33, 1.99, True),
    ("Anwendung", 4, 126, 6.71, 1.97, True),
    ("Tränen", 3, 107, 6.53, 1.70, True),
    ("Ruhe", 4, 216, 5.93, 1.95, True),
    ("Gedanken", 7, 403, 5.84, 2.58, True),
    ("Himmel", 3, 270, 5.20, 1.66, True),
    ("Hilfe", 4, 477, 4.79, 1.89, True),
    ("Wort", 3, 647, 3.94, 1.57, True),
    ("Vernunft", 3, 736, 3.75, 1.55, False),
    ("Frage", 4, 1054, 3.65, 1.77, True),
    ("Welt", 4, 1900, 2.80, 1.60, True),
    ("Sie", 3, 2414, 2.04, 1.17, False),
]

N_FITTED = 2_750_000
F_KOMMEN = 832


@pytest.fixture(scope="session")
def lexicon():
    return load_verb_lexicon(builtin_lexicon_path())


# vocabulary for random corpora: mixed-case words plus key verb forms
_LOWER = ["und", "der", "die", "das", "zu", "in", "auf", "wird", "sehr",
          "dann", "aber", "hier", "nicht", "zur"]
_UPPER = ["Haus", "Geltung", "Betracht", "Mann", "Frau", "Stadt", "Wort",
          "Sie", "Anstalten", "Hilfe"]
_KEYS = ["kommen", "kommt", "kam", "bringen", "gebracht"]


def random_text(rng: random.Random, max_words: int = 200) -> str:
    """Random words, random capitalization mix, random sentence breaks."""
    n = rng.randint(5, max_words)
    chunks = []
    for _ in range(n):
        r = rng.random()
        if r < 0.35:
            chunks.append(rng.choice(_UPPER))
        elif r < 0.55:
            chunks.append(rng.choice(_KEYS))
        else:
            chunks.append(rng.choice(_LOWER))
        if rng.random() < 0.12:
            chunks.append(rng.choice([".", "!", "?"]))
    return " ".join(chunks)


def random_corpus(rng: random.Random, max_words: int = 200):
    return tokenize(random_text(rng, max_words))
