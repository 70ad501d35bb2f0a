"""Command-line front end: sos-formulas <command> [flags]."""
