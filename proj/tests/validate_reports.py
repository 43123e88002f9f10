#!/usr/bin/env python3
# Copyright 2026 The polarlab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Runs each polarlab subcommand and validates the JSON report against the schema."""

import json
import pathlib
import subprocess
import sys

import jsonschema

RUNS = {
    "verify": ["verify", "--m", "3", "--n", "3"],
    "bounds": ["bounds", "--m", "2,3", "--n", "4", "--p", "1.5,inf", "--samples", "200", "--restarts", "8"],
    "shuffle-table": ["shuffle-table", "--m", "3"],
    "estimate-norm": ["estimate-norm", "--m", "2", "--n", "3", "--p", "2,inf", "--restarts", "8"],
    "bourgain": ["bourgain", "--m", "2,4", "--n", "12", "--samples", "200"],
    "timed": ["shuffle-table", "--m", "2", "--timing"],
}


def main() -> int:
    exe, schema_path, out_dir = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
    out_dir.mkdir(parents=True, exist_ok=True)
    schema = json.loads(schema_path.read_text())
    validator = jsonschema.Draft202012Validator(schema)
    failed = 0
    for name, args in RUNS.items():
        out = out_dir / f"{name}.json"
        proc = subprocess.run([exe, *args, "--threads", "1", "--out", str(out)], capture_output=True, text=True)
        if proc.returncode != 0:
            print(f"{name}: exit {proc.returncode}: {proc.stderr.strip()}")
            failed += 1
            continue
        errors = list(validator.iter_errors(json.loads(out.read_text())))
        for e in errors:
            print(f"{name}: {'/'.join(map(str, e.absolute_path))}: {e.message}")
        failed += bool(errors)
        print(f"{name}: {'invalid' if errors else 'valid'}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
