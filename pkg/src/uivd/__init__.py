# UIVD kernel - polynomial kernelization for Unit Interval Vertex Deletion

from .graph_core import Graph, Instance, load, load_file, serialize
from .recognition import UnitIntervalCertificate, recognize

__version__ = "0.1.0"

__all__ = ["Graph", "Instance", "load", "load_file", "serialize", "UnitIntervalCertificate", "recognize"]
