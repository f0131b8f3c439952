"""λ-calculus laboratory for reduction at a distance, E-/σ-equivalence and linear head reduction."""

__version__ = "0.1.0"
