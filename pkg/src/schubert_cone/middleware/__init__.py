"""Per-command timing."""
