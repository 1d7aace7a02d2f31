#!/usr/bin/env python3
# Tokenizer that hangs after the handshake, for timeout handling.
import sys
import time

print("TOKENIZER default", flush=True)
sys.stdin.readline()
time.sleep(3600)
