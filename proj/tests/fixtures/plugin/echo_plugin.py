#!/usr/bin/env python3
# Identity tokenizer: splits each input line on whitespace.
import sys

print("TOKENIZER default base lemma", flush=True)
for line in sys.stdin:
    print(" ".join(line.split()), flush=True)
