"""
Shared utility functions for the vknot package.
"""
import numpy as np


def make_rng(seed):
    """
    Build a seeded random generator.

    Args:
        seed: Integer seed, or an existing numpy Generator which is returned as is

    Returns:
        numpy.random.Generator: Deterministic generator for the given seed
    """
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_permutation(n, rng):
    """
    Generate a random permutation of range(n).

    Args:
        n: Length of the permutation
        rng: numpy Generator

    Returns:
        list: The shuffled integers 0..n-1
    """
    return [int(i) for i in rng.permutation(n)]


def check_sign(value):
    """Return value as an int if it is +1 or -1, else raise ValueError."""
    if value not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {value!r}")
    return int(value)


def cyclic_adjacent(i, j, size):
    """True iff positions i and j are neighbours on a circle with size slots."""
    if size < 2 or i == j:
        return False
    return (i - j) % size in (1, size - 1)


def in_open_arc(p, start, end, size):
    """
    Test whether position p lies strictly inside the counterclockwise arc
    running from start to end on a circle of the given size.
    """
    return 0 < (p - start) % size < (end - start) % size


def replace_cyclic(seq, start, length, replacement):
    """
    Replace a cyclic segment of a sequence.

    The segment covers positions start, start+1, ..., start+length-1 taken
    modulo len(seq). When it wraps past the end, the replacement is split so
    that the result is the same cyclic word as a straight replacement would be.

    Args:
        seq: Sequence to edit
        start: First position of the segment
        length: Number of positions in the segment
        replacement: New items, in cyclic order

    Returns:
        list: The edited sequence
    """
    seq = list(seq)
    size = len(seq)
    replacement = list(replacement)
    if length > size:
        raise ValueError("segment longer than the sequence")
    start %= size if size else 1
    if start + length <= size:
        return seq[:start] + replacement + seq[start + length:]
    k = size - start
    # positions start..size-1 take the first k replacement items
    return replacement[k:] + seq[start + length - size:start] + replacement[:k]


def sign_char(sign):
    return "+" if sign > 0 else "-"
