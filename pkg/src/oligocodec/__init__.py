"""Image storage codec over constrained quaternary (A/T/C/G) sequences.

Pipeline: wavelet transform -> per-subband uniform quantization under a
nucleotide budget -> constrained dictionary encoding -> fixed-length
oligo formatting -> simulated amplification/sequencing channel ->
consensus selection -> inverse pipeline back to an image.
"""

from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
