"""Speech recognition gateway: recognition results, noise simulation, WER.

No audio is captured here. The passthrough channel stands in for the
microphone path in text mode, the simulated channel injects word-level
noise at a target error rate, and the external channel is an interface
seam with no client shipped.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rand import Lcg, mix_seed
from .textrep import tokenize

CHANNELS = ("passthrough", "simulated_noise", "external")

# Replacement vocabulary biased toward plausible misrecognitions of the
# bundled scenario (rank titles, names, mission words).
CONFUSION_POOL = (
    "wong", "wang", "wan", "gang", "king",
    "captain", "kept", "caption", "cab",
    "morning", "mourning", "warning",
    "honor", "owner", "on", "or",
    "lieutenant", "tenant",
    "supplies", "surprise", "applies",
    "briefing", "breathing", "brief",
    "mission", "machine", "missing",
    "coalition", "collision",
    "depot", "deposit",
    "there", "their", "then", "them",
    "to", "too", "two", "for", "four",
)


class AsrError(Exception):
    pass


@dataclass(frozen=True)
class AsrResult:
    transcript: str
    confidence: float
    channel: str = "passthrough"

    def __post_init__(self):
        if not 0.0 <= self.confidence <= 1.0:
            raise AsrError(f"confidence must be in [0, 1], got {self.confidence}")
        if self.channel not in CHANNELS:
            raise AsrError(f"unknown channel {self.channel!r}")


def recognize_passthrough(text: str) -> AsrResult:
    """Identity recognition: the transcript is the input, confidence 1."""
    return AsrResult(transcript=text, confidence=1.0, channel="passthrough")


def recognize_external(audio_ref: object) -> AsrResult:
    """Seam for a cloud recognizer; no client is shipped."""
    raise NotImplementedError("no external speech recognition client is configured")


_LETTERS = "abcdefghijklmnopqrstuvwxyz"


def _perturbed(word: str, rng: Lcg) -> str:
    if not word:
        return rng.choice(_LETTERS)
    i = rng.randint(len(word))
    out = word[:i] + rng.choice(_LETTERS) + word[i + 1 :]
    if tokenize(out) == tokenize(word):
        out = word + rng.choice(_LETTERS)
    return out


def _substitute(word: str, rng: Lcg) -> str:
    candidate = rng.choice(CONFUSION_POOL)
    if tokenize(candidate) == tokenize(word):
        return _perturbed(word, rng)
    return candidate


def corrupt(text: str, target_wer: float, seed: int) -> AsrResult:
    """Simulate recognition noise at a target word error rate.

    Per word, independently: substitute, delete, or insert a pool word
    after it, each with probability target_wer / 3. Deterministic given
    seed. Confidence is 1 minus the realized corruption fraction.
    """
    if not 0.0 <= target_wer <= 0.9:
        raise AsrError(f"target_wer must be in [0, 0.9], got {target_wer}")
    rng = Lcg(mix_seed(seed, 0xA5F))
    words = text.split()
    out: list[str] = []
    errors = 0
    third = target_wer / 3.0
    for word in words:
        u = rng.random()
        if u < third:
            out.append(_substitute(word, rng))
            errors += 1
        elif u < 2 * third:
            errors += 1  # deletion
        elif u < 3 * third:
            out.append(word)
            out.append(rng.choice(CONFUSION_POOL))
            errors += 1
        else:
            out.append(word)
    fraction = errors / max(1, len(words))
    confidence = min(1.0, max(0.0, 1.0 - fraction))
    return AsrResult(transcript=" ".join(out), confidence=confidence, channel="simulated_noise")


def wer(reference: str, hypothesis: str) -> float:
    """Word error rate: word-level Levenshtein distance over reference
    length; unit costs; may exceed 1 for hypotheses longer than the
    reference. Tokenization matches the text representation module."""
    ref = tokenize(reference)
    hyp = tokenize(hypothesis)
    if not ref:
        raise AsrError("reference is empty after tokenization")
    previous = list(range(len(hyp) + 1))
    for i, ref_token in enumerate(ref, start=1):
        current = [i] + [0] * len(hyp)
        for j, hyp_token in enumerate(hyp, start=1):
            substitution = previous[j - 1] + (0 if ref_token == hyp_token else 1)
            current[j] = min(previous[j] + 1, current[j - 1] + 1, substitution)
        previous = current
    return previous[-1] / len(ref)
