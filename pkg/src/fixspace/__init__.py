"""Exact computations with small finite groups and their modules over
finite fields: fixed spaces of semisimple elements, generating triples
and conjugate pairs of elements of coprime order, character tables, and
weight-multiset methods for algebraic-group comparisons."""

__version__ = "0.1.0"
