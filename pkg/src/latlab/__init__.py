"""latlab: construct, verify, and exhaustively search local antimagic total
labelings of paths, spiders, and one-point unions of cycles and paths."""

from .graphs import (
    EdgeKey,
    Graph,
    SpiderSpec,
    build_cycle,
    build_path,
    build_spider,
    build_tadpole,
    build_two_cycles,
    edge_key,
    incident_edges,
    is_bipartite,
    is_connected,
)
from .labeling import (
    IncompleteLabelingError,
    PartialTotalLabeling,
    TotalLabeling,
    VerifyReport,
    WeightProfile,
    color_set,
    verify,
    weight,
    weight_profile,
)
from .constructions import (
    CONSTRUCTIONS,
    label_bicyclic,
    label_sp2_even,
    label_sp2_odd,
    label_spider_case1,
    label_spider_case2,
    label_star,
    label_unicyclic,
    partial_path_labeling,
)
from .bounds import (
    INCONCLUSIVE,
    RULED_OUT,
    BoundReport,
    chi_lower,
    set_A_membership,
    sp2_two_color_bound,
    spider_h,
)
from .solver import (
    LevelResult,
    SearchBudget,
    SearchStatus,
    SolveResult,
    SpiderSearchResult,
    exact_chi_lat,
    find_labeling_with_colors,
    spider_two_labeling,
    spider_weight_bounds,
)
from .certio import (
    Certificate,
    CertificateParseError,
    certificate_labeling,
    certificate_payload,
    check_certificate,
    export_dot,
    make_certificate,
    read_certificate,
    read_graph_text,
    write_certificate,
    write_graph_text,
)

__version__ = "0.1.0"
