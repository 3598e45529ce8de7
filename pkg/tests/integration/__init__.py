"""End-to-end runs of the verification service and the command line."""
