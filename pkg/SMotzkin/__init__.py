"""Exact counts of partial S-Motzkin paths."""
