"""Even, odd and signed Eulerian numbers, the sigma operator and its orbits."""

__version__ = "0.1.0"
