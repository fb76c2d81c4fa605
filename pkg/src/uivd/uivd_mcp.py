#!/usr/bin/env python3
"""
UIVD MCP Server - recognition, kernelization and exact solving as MCP tools

Graphs travel as text in the same "n m" + edge lines format the CLI reads.
Every tool answers with a JSON string; failures come back as
{"success": false, "error": ...} instead of raising.
"""

import json
import logging

from fastmcp import FastMCP

from .config import configure_logging
from .generator import generate_text
from .graph_core import Instance, load, serialize, serialize_map
from .kernel import KernelizationPipeline, Verdict
from .oracle import oracle_solve
from .recognition import recognize
from .schemas import recognition_record

logger = logging.getLogger(__name__)

# Initialize MCP
mcp = FastMCP("UIVD")


def _failure(tool: str, error: Exception) -> str:
    logger.error(f"{tool} failed: {error}", exc_info=True)
    return json.dumps({"success": False, "error": str(error)}, indent=2)


@mcp.tool()
def recognize_graph(graph_text: str) -> str:
    """Decide whether a graph is a unit interval graph, with a model or a forbidden subgraph."""
    try:
        record = recognition_record(recognize(load(graph_text)))
        return json.dumps({"success": True, **record.model_dump(exclude_none=True)}, indent=2)
    except Exception as e:
        return _failure("recognize_graph", e)


@mcp.tool()
def kernelize_graph(graph_text: str, k: int) -> str:
    """Kernelize (G, k); returns the verdict, the kernel graph, its id map and run stats."""
    try:
        result = KernelizationPipeline().run(load(graph_text), k)
        payload = {
            "success": True,
            "verdict": result.verdict.value,
            "stats": result.stats.model_dump(),
        }
        if result.verdict is Verdict.KERNEL:
            payload["kernel"] = serialize(result.kernel.graph)[0]
            payload["k"] = result.kernel.k
            payload["map"] = serialize_map(result.mapping)
        return json.dumps(payload, indent=2)
    except Exception as e:
        return _failure("kernelize_graph", e)


@mcp.tool()
def solve_graph(graph_text: str, k: int) -> str:
    """Exactly solve UIVD with budget k (small graphs only)."""
    try:
        solution = oracle_solve(Instance(load(graph_text), k))
        return json.dumps({
            "success": True,
            "feasible": solution is not None,
            "deleted": sorted(solution.deleted) if solution is not None else [],
        }, indent=2)
    except Exception as e:
        return _failure("solve_graph", e)


@mcp.tool()
def generate_graph(n: int, noise: int = 0, seed: int = 0) -> str:
    """Generate a unit interval graph on n vertices plus `noise` random extra vertices."""
    try:
        if n < 1:
            raise ValueError(f"n must be at least 1, got {n}")
        return json.dumps({"success": True, "graph": generate_text(n, noise, seed)}, indent=2)
    except Exception as e:
        return _failure("generate_graph", e)


def main():
    """Main entry point for the UIVD MCP server."""
    configure_logging()
    mcp.run()


if __name__ == "__main__":
    main()
