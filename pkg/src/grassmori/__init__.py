"""Exact computations on blow-ups of prime Fano varieties and Grassmannians
at general points: Mori cones and Fano verdicts, Borel orbit complexity,
effective and movable cones, and stable base loci."""

__version__ = "0.1.0"
