"""Exact arithmetic and predicates over Q(sqrt5)."""
