#!/usr/bin/env python3
"""bastree schema - shared types."""

from typing import Any

# result/oracle documents, as loaded from JSON
_DocDictT = dict[str, Any]
