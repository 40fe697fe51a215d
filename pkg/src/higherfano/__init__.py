"""Higher Fano conditions on rational homogeneous spaces and complete
intersections: root systems, Schubert calculus, Chern characters, minimal
rational curves and the classification checker built on them."""

__version__ = "0.1.0"
