# Copyright 2026 The symrand Authors
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

"""Checks docs/config_schema.json against the sample configs."""

import json
import pathlib
import sys

import jsonschema

schema_path, data_dir = map(pathlib.Path, sys.argv[1:3])
validator = jsonschema.Draft202012Validator(json.loads(schema_path.read_text()))
cases = {
    "counts.json": True,
    "time_series.json": True,
    "bad_key.json": False,
}
inline = [
    ({"seed": 3}, True),
    ({"experiment": "converge", "seed": 1, "model": "r2", "n": 3, "epsilon": 0.002}, True),
    ({"experiment": "converge", "seed": 1, "shots": 5}, False),
    ({"experiment": "noise-estimation", "seed": 1, "targets": [2.0]}, False),
    ({"experiment": "time-series"}, False),
]
failures = 0
for name, expected in cases.items():
    ok = validator.is_valid(json.loads((data_dir / name).read_text()))
    failures += ok != expected
    print(f"{name}: valid={ok} expected={expected}")
for config, expected in inline:
    ok = validator.is_valid(config)
    failures += ok != expected
    print(f"{json.dumps(config)}: valid={ok} expected={expected}")
sys.exit(1 if failures else 0)
