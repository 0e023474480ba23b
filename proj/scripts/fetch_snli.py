#!/usr/bin/env python3
# Copyright 2026 The negkit Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Downloads SNLI 1.0 and writes negkit corpus files.

Output: <out>/snli_validation.jsonl and <out>/snli_train.jsonl with one
{"id", "premise", "hypothesis", "label"} record per line. Rows without a
gold label get label -1 (skipped by negkit on ingest).
"""

import argparse
import io
import json
import pathlib
import urllib.request
import zipfile

URL = "https://nlp.stanford.edu/projects/snli/snli_1.0.zip"
LABELS = {"entailment": 0, "neutral": 1, "contradiction": 2, "-": -1}
SPLITS = {"dev": "snli_validation.jsonl", "train": "snli_train.jsonl"}


def convert(lines, out_path):
    count = 0
    with open(out_path, "w", encoding="utf-8", newline="\n") as out:
        for raw in lines:
            row = json.loads(raw)
            record = {
                "id": row["pairID"],
                "premise": row["sentence1"],
                "hypothesis": row["sentence2"],
                "label": LABELS[row["gold_label"]],
            }
            out.write(json.dumps(record, ensure_ascii=False) + "\n")
            count += 1
    return count


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="data/snli", help="output directory")
    parser.add_argument("--zip", help="use an already downloaded snli_1.0.zip")
    args = parser.parse_args()

    if args.zip:
        data = pathlib.Path(args.zip).read_bytes()
    else:
        print(f"downloading {URL}")
        with urllib.request.urlopen(URL) as response:
            data = response.read()

    out_dir = pathlib.Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    with zipfile.ZipFile(io.BytesIO(data)) as archive:
        for split, name in SPLITS.items():
            member = f"snli_1.0/snli_1.0_{split}.jsonl"
            with archive.open(member) as f:
                lines = io.TextIOWrapper(f, encoding="utf-8")
                n = convert(lines, out_dir / name)
            print(f"{out_dir / name}: {n} rows")


if __name__ == "__main__":
    main()
