"""Normal surfaces, homology and a SAT gadget for 3-manifold triangulations."""

__version__ = "0.1.0"
