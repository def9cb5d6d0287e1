# Fourier-Mukai transform of Higgs bundles on hyperelliptic curves

__version__ = "0.1.0"
