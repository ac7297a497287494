# config.py — defaults and optional JSON overrides
# Usage:
#   from config import load_config
#   cfg = load_config()                      # reads chordalcut.config.json if present
#   bound = cfg["analysis"]["exhaustive_path_bound"]
#
# Notes:
# - The file only overrides keys inside known sections.
# - The exact competition-number oracle is capped at 7 vertices whatever the file says.

import json
import logging
import os
from typing import Any, Dict, Optional

log = logging.getLogger("chordalcut.config")

DEFAULT_CONFIG_PATH = "chordalcut.config.json"

DEFAULT_CONFIG: Dict[str, Dict[str, Any]] = {
    "analysis": {
        "exhaustive_path_bound": 16,   # s_ce_exhaustive refuses larger graphs
        "check_invariants": True,       # runtime asserts inside the builder
    },
    "competition": {
        "exact_max_vertices": 7,
        "default_kmax": 4,
        "fresh_prefix": "z#",
    },
    "generator": {
        "max_retries": 200,
        "min_cycle_len": 4,
        "max_cycle_len": 7,
    },
    "logging": {
        "level": "WARNING",
    },
}

EXACT_MAX_VERTICES_HARD = 7


def load_config(path: Optional[str] = None) -> Dict[str, Dict[str, Any]]:
    cfg = json.loads(json.dumps(DEFAULT_CONFIG))  # deep copy
    path = path or DEFAULT_CONFIG_PATH
    if os.path.exists(path):
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = json.load(f)
            for section, values in data.items():
                if section in cfg and isinstance(values, dict):
                    cfg[section].update(values)
                else:
                    log.warning("ignoring unknown config section %r in %s", section, path)
        except (OSError, ValueError) as exc:
            log.warning("could not read config %s: %s", path, exc)

    comp = cfg["competition"]
    comp["exact_max_vertices"] = min(int(comp["exact_max_vertices"]), EXACT_MAX_VERTICES_HARD)
    gen = cfg["generator"]
    gen["min_cycle_len"] = max(4, int(gen["min_cycle_len"]))
    gen["max_cycle_len"] = max(gen["min_cycle_len"], int(gen["max_cycle_len"]))
    return cfg
