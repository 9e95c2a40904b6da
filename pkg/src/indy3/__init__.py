"""Independence polynomials of graphs with independence number 3 and the dynamics of their cubics."""

from .attractor import (EscapeGrid, PointSet, Window, approximate_attractor, diameter,
                        escape_time_grid, hausdorff_distance, julia_inverse_sample, roots_of_level)
from .classify import (ClassificationReport, Composition, Feasibility, FeasibilityStatus, Realizable,
                       Taxonomy, Verdict, attractor_composition, buff_screen, classify, decide,
                       feasibility, two_fixed_point_catalog)
from .cubic import (Cubic, Evidence, critical_disk, critical_orbit_evidence, escape_radius,
                    from_profile, iterate_orbit, monic_centered_form, preimages, structure_report)
from .enumerate import TripleCatalog, enumerate_realizable_triples, find_witness
from .graphs import (Graph, IndependenceProfile, composition_profile, independence_profile,
                     lexicographic_product, make_family, parse_graph)
from .tables import verify_table as reproduce_table

__all__ = [
    "ClassificationReport", "Composition", "Cubic", "EscapeGrid", "Evidence", "Feasibility",
    "FeasibilityStatus", "Graph", "IndependenceProfile", "PointSet", "Realizable", "Taxonomy",
    "TripleCatalog", "Verdict", "Window", "approximate_attractor", "attractor_composition",
    "buff_screen", "classify", "composition_profile", "critical_disk",
    "critical_orbit_evidence", "decide", "diameter", "enumerate_realizable_triples",
    "escape_radius", "escape_time_grid", "feasibility", "find_witness", "from_profile",
    "hausdorff_distance", "independence_profile", "iterate_orbit", "julia_inverse_sample",
    "lexicographic_product", "make_family", "monic_centered_form", "parse_graph", "preimages",
    "reproduce_table", "roots_of_level", "structure_report", "two_fixed_point_catalog",
]
