"""cauchykit test suite: unit tests per package, integration tests through the CLI and service."""
