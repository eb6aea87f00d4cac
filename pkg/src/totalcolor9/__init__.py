"""Total 9-coloring laboratory for plane graphs of maximum degree eight."""
from .embedding import PlanarEmbedding, build_embedding, degree_stats, trace_faces
from .coloring import TotalColoring, solve, total_chromatic_number, verify_total_coloring
from .kernels import BACKEND

__all__ = [
    "BACKEND",
    "PlanarEmbedding",
    "TotalColoring",
    "build_embedding",
    "degree_stats",
    "solve",
    "total_chromatic_number",
    "trace_faces",
    "verify_total_coloring",
]
__version__ = "0.1.0"
