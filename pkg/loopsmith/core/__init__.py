"""Loop algebra, triple systems, the Bose construction and MP verdicts."""
