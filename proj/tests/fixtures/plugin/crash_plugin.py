#!/usr/bin/env python3
# Tokenizer that dies after the first response.
import sys

print("TOKENIZER default", flush=True)
for i, line in enumerate(sys.stdin):
    if i >= 1:
        sys.exit(3)
    print(" ".join(line.split()), flush=True)
