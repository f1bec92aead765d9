"""Soft-partition clustering toolkit: FCM/PCM, VAT/iVAT tendency, validity indices."""

from ._core import (
    davies_bouldin,
    dunn_index,
    fcm_fit,
    generate,
    ivat_transform,
    load_csv,
    pairwise_matrix,
    partition_coefficient,
    pcm_fit,
    render_pgm,
    scenario_names,
    sweep_c,
    vat_order,
    write_csv,
)

__all__ = [
    "davies_bouldin",
    "dunn_index",
    "fcm_fit",
    "generate",
    "ivat_transform",
    "load_csv",
    "pairwise_matrix",
    "partition_coefficient",
    "pcm_fit",
    "render_pgm",
    "scenario_names",
    "sweep_c",
    "vat_order",
    "write_csv",
]
