"""
normdisk — minimal enclosing disks in strictly convex normed planes.
Provides:
- l^p and custom strictly convex norms
- Bisectors, triangle types and circumcenters
- Elzinga–Hearn and Shamos–Hoey solvers with reference oracles
- Point-file parsing, certificate checks and SVG plots
"""
__version__ = "0.1.0"
