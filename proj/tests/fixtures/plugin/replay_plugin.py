#!/usr/bin/env python3
# Replays a recorded tokenizer session: responds to each known input line
# with the recorded segmentation. Unknown input is an error.
import sys
from pathlib import Path

session = {}
for row in Path(sys.argv[1]).read_text(encoding="utf-8").splitlines():
    if not row or row.startswith("#"):
        continue
    inp, out = row.split("\t")
    session[inp] = out

print("TOKENIZER default base lemma", flush=True)
for line in sys.stdin:
    line = line.rstrip("\n")
    if line not in session:
        sys.exit(4)
    print(session[line], flush=True)
