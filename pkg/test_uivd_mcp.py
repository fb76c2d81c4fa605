#!/usr/bin/env python3
"""
Test the UIVD MCP tools through an in-memory fastmcp client
"""

import asyncio
import json

from fastmcp import Client

from uivd.graph_core import serialize
from uivd.uivd_mcp import mcp
from testgraphs import claw, clique, cycle, disjoint_union


async def _call(name, arguments):
    async with Client(mcp) as client:
        result = await client.call_tool(name, arguments)
    content = result.content if hasattr(result, "content") else result
    return json.loads(content[0].text)


async def test_tools_are_listed():
    async with Client(mcp) as client:
        tools = await client.list_tools()
    tool_names = {t.name for t in tools}
    assert {"recognize_graph", "kernelize_graph", "solve_graph", "generate_graph"} <= tool_names


async def test_recognize_graph():
    payload = await _call("recognize_graph", {"graph_text": serialize(clique(3))[0]})
    assert payload["success"] is True
    assert payload["unit_interval"] is True

    payload = await _call("recognize_graph", {"graph_text": serialize(claw())[0]})
    assert payload["unit_interval"] is False
    assert payload["certificate"]["kind"] == "claw"


async def test_recognize_graph_reports_parse_errors():
    payload = await _call("recognize_graph", {"graph_text": "2 1\n0 5\n"})
    assert payload["success"] is False
    assert "line 2" in payload["error"]


async def test_kernelize_graph():
    text = serialize(disjoint_union(cycle(20), claw()))[0]
    payload = await _call("kernelize_graph", {"graph_text": text, "k": 2})
    assert payload["success"] is True
    assert payload["verdict"] == "kernel"
    assert payload["k"] == 2
    assert payload["kernel"].splitlines()[0].split()[0] == str(payload["stats"]["kernel_n"])


async def test_kernelize_graph_no():
    text = serialize(disjoint_union(*[claw() for _ in range(7)]))[0]
    payload = await _call("kernelize_graph", {"graph_text": text, "k": 1})
    assert payload["verdict"] == "no"
    assert "kernel" not in payload


async def test_solve_graph():
    payload = await _call("solve_graph", {"graph_text": serialize(cycle(5))[0], "k": 1})
    assert payload["feasible"] is True
    assert len(payload["deleted"]) == 1

    payload = await _call("solve_graph", {"graph_text": serialize(cycle(5))[0], "k": 0})
    assert payload["feasible"] is False


async def test_generate_graph():
    first = await _call("generate_graph", {"n": 12, "noise": 1, "seed": 3})
    second = await _call("generate_graph", {"n": 12, "noise": 1, "seed": 3})
    assert first == second
    assert first["graph"].startswith("13 ")

    payload = await _call("generate_graph", {"n": 0})
    assert payload["success"] is False


if __name__ == "__main__":
    asyncio.run(test_kernelize_graph())
