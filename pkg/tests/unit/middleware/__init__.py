"""Unit tests for middleware."""
