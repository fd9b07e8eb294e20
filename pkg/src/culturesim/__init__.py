"""Dialogue-based cultural awareness training simulator.

A scenario-driven dialogue engine whose trainee utterances are scored by
per-section multi-label text classifiers against abstracted cultural
features, with confidence-gated input, template-generated adaptive
feedback, session logging, and an evaluation harness.
"""

__version__ = "0.1.0"
