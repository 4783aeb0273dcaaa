"""Word-representable graphs and triangulations of rectangular polyominoes with a domino tile."""

__version__ = "0.1.0"
