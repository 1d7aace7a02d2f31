#!/usr/bin/env python3
# Misbehaving tokenizer: answers only the first two requests, then exits
# cleanly, violating the one-line-in one-line-out protocol.
import sys

print("TOKENIZER default", flush=True)
for i, line in enumerate(sys.stdin):
    if i >= 2:
        sys.exit(0)
    print(" ".join(line.split()), flush=True)
