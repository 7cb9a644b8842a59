#!/usr/bin/env python3
"""Regenerate the evidence data files (Levi-restriction and nilcone-slice
identifications used where neither the direct slice route nor the
Borho-MacPherson count alone settles a surface label)."""

import json
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

OUT = os.path.join(os.path.dirname(__file__), "..", "src", "nilslice", "data")

EVIDENCE = {
    "E6": [
        {"edge": ["E6(a3)", "D5(a1)"], "method": "nilcone",
         "nilcone": "A2", "at": "D4", "upper_of_cone": "E6(a3)",
         "expected_core": "A2",
         "provenance": "slice at D4 is the sl3 nilcone; D5(a1) sits at its "
                       "subregular position"},
        {"edge": ["2A2", "A2+A1"], "method": "nilcone",
         "nilcone": "A2", "at": "A2", "upper_of_cone": "2A2",
         "expected_core": "A2",
         "provenance": "slice at A2 is a pair of sl3 nilcones; unibranch "
                       "at A2+A1"},
    ],
    "E7": [
        {"edge": ["D5", "E6(a3)"], "method": "restriction",
         "sub_type": "E6", "sub_edge": ["D5", "E6(a3)"],
         "levi_base_idx": [0, 1, 2, 3, 4, 5],
         "provenance": "restriction to the E6 Levi"},
        {"edge": ["D5(a1)", "A4+A1"], "method": "restriction",
         "sub_type": "E6", "sub_edge": ["D5(a1)", "A4+A1"],
         "levi_base_idx": [0, 1, 2, 3, 4, 5],
         "provenance": "restriction to the E6 Levi"},
        {"edge": ["A4", "A3+A2"], "method": "restriction",
         "sub_type": "D6", "expected": "C2",
         "levi_base_idx": [1, 2, 3, 4, 5, 6],
         "upper_construct": [3, 4, 5, 6], "lower_construct": [1, 2, 3, 5, 6],
         "provenance": "restriction to the D6 Levi; classical slice"},
        {"edge": ["D4", "D4(a1)"], "method": "nilcone",
         "nilcone": "G2", "at": "2A2", "upper_of_cone": "D4",
         "expected_core": "G2",
         "provenance": "slice at 2A2 is the G2 nilcone"},
        {"edge": ["(A5)''", "A4"], "method": "nilcone",
         "nilcone": "B3", "at": "A3", "upper_of_cone": "(A5)''",
         "expected_core": "B3",
         "provenance": "slice at A3 contains the so7 nilcone"},
    ],
    "E8": [],
}


def build():
    from nilslice.rootsys import build_root_system
    for ct, entries in EVIDENCE.items():
        rs = build_root_system(ct)
        for e in entries:
            if "levi_base_idx" in e:
                e["levi_base"] = [list(rs.simple_roots[i])
                                  for i in e.pop("levi_base_idx")]
        doc = {"schema": "nilslice-evidence/1", "cartan_type": ct,
               "entries": entries}
        path = os.path.join(OUT, f"evidence_{ct.lower()}.json")
        with open(path, "w") as f:
            json.dump(doc, f, indent=1)
        print("wrote", path)


if __name__ == "__main__":
    build()
