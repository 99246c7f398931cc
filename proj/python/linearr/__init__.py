"""Line arrangements over Q(w): intersection lattices, Aomoto-Betti numbers,
nets and combinatorial monodromy reports."""

from ._linearr import (
    Arrangement,
    DataError,
    corpus_names,
    lattice_isomorphism,
    latin_inventory,
    run,
    verify_lemma14,
)

__all__ = [
    "Arrangement",
    "DataError",
    "corpus_names",
    "lattice_isomorphism",
    "latin_inventory",
    "run",
    "verify_lemma14",
]
