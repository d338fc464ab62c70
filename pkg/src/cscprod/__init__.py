"""Constant sectional curvature hypersurfaces of S^n x R and H^n x R, built and measured."""

__version__ = "0.1.0"
