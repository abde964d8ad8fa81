"""SSVEP frequency recognition toolkit.

Filter-bank feature extraction over periodogram spectra, one-vs-all logistic
classification with a temporal voting rule, PSDA/CCA baselines, a synthetic
SSVEP generator and evaluation metrics (accuracy, MRT, ITR, paired t-tests).
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
