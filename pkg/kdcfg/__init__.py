"""Displacement context-free grammars: normal form, parsing, pumping and pump geometry."""
