"""Local antimagic labelings: constructions, a verifier and an exact solver."""
