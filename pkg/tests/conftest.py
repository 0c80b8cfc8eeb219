import random

from mindswap.perm import Permutation, insider


def permutation_from_images(images: list[int]) -> Permutation:
    """Permutation sending insider i+1 to insider images[i]."""
    return Permutation({insider(i + 1): insider(images[i]) for i in range(len(images))})


def random_permutation(rng: random.Random, n: int) -> Permutation:
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return permutation_from_images(images)


def random_even_permutation(rng: random.Random, n: int) -> Permutation:
    while True:
        p = random_permutation(rng, n)
        if p.parity() == 0:
            return p


def random_cycle(rng: random.Random, k: int, universe: int) -> tuple:
    picks = rng.sample(range(1, universe + 1), k)
    return tuple(insider(i) for i in picks)
