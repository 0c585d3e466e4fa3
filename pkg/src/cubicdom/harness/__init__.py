"""Sweep harness: corpus runs, findings cache, reports and the CLI."""
