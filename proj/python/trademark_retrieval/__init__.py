"""Shape-based trademark image retrieval.

Images are numpy uint8 arrays: (height, width) for grayscale or
(height, width, 3) for RGB.
"""

from ._tir import (
    DatabaseError,
    DegenerateImageError,
    Error,
    FeatureDatabase,
    FeatureRecord,
    ImageError,
    InvalidArgument,
    Match,
    UndefinedMetricError,
    adaptive_threshold,
    build_index,
    corner_count,
    corner_metric,
    corners,
    euclidean_distance,
    evaluate,
    generate_rotated_dataset,
    hu_moments,
    load_image,
    load_index,
    log_transform,
    precision,
    prompt_edge,
    query,
    recall,
    rotate,
    save_pgm,
    to_gray,
)

__all__ = [name for name in dir() if not name.startswith("_")]
