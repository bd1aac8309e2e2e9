"""Threshold evaluation method"""

from enum import StrEnum


class ThresholdMethod(StrEnum):
    CLOSED_FORM = "closed_form"
    NUMERIC = "numeric"
