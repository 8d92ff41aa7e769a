"""Run inputs and report models."""
