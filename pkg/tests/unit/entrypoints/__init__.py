"""Unit tests for entrypoints layer."""
