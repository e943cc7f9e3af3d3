"""Python bindings for the docanno annotation core."""

from ._core import (
    Bounds,
    DocannoError,
    Project,
    average_precision,
    default_iou_thresholds,
    extract_tokens,
    intersection_area,
    iou,
    rescale_bounds,
    select_tokens,
    snap_bounds,
    synthetic_pdf,
    token_accuracy,
    validate,
)

__all__ = [
    "Bounds",
    "DocannoError",
    "Project",
    "average_precision",
    "default_iou_thresholds",
    "extract_tokens",
    "intersection_area",
    "iou",
    "rescale_bounds",
    "select_tokens",
    "snap_bounds",
    "synthetic_pdf",
    "token_accuracy",
    "validate",
]
