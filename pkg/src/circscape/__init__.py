"""Enumeration of bounded-depth circuit space: reachability, expressibility and circuit probability."""
