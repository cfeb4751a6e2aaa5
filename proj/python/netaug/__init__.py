from ._netaug import (
    Arc,
    ArcSolution,
    Cascade,
    CactusGraph,
    EdgeSolution,
    ForestStack,
    LinkSolution,
    ParseError,
    PipelineReport,
    PipelineStage,
    SizeLimitExceeded,
    SpannerState,
    UnfoldedCycle,
    UnweightedArcStore,
    WeightedCycleAugmenter,
    WeightedEdge,
    cactus_build,
    cactus_unfold,
    cactus_validate,
    edge_connectivity,
    exact_directed_cycle_cover,
    exact_kcap,
    exact_sndp,
    exact_stap,
    kcap_fully_streaming,
    kcap_link_arrival,
    kcap_link_arrival_cactus,
    kecss,
    run_cli,
    sndp,
    three_edge_components,
    validate_certificate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
