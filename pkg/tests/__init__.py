"""Test suite for schubert-cone."""
