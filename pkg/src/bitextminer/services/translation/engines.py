"""Translation engine adapters."""

import hashlib
import queue
import re
import shlex
import subprocess
import threading
from pathlib import Path
from typing import Dict, List, Optional, Protocol, Sequence, TextIO, Union

from ...config.logging import LoggerMixin
from ...core.textproc import tokenize
from ...exceptions import TranslationEngineError
from ..alignment.models import Lexicon

_WHITESPACE = re.compile(r"\s+")


def gloss_translate(line: str, lex: Lexicon) -> str:
    """Word-by-word substitution with each token's best lexicon target."""
    return " ".join(lex.best_target(token) or token for token in tokenize(line))


def normalize_whitespace(text: str) -> str:
    return _WHITESPACE.sub(" ", text).strip()


def load_translation_memory(path: Path) -> Dict[str, str]:
    """
    Load a ``source<TAB>target`` translation memory.

    Keys are whitespace-normalized; the first entry wins on duplicates.
    """
    memory: Dict[str, str] = {}
    with open(path, "r", encoding="utf-8") as f:
        for line in f:
            line = line.rstrip("\n")
            if "\t" not in line:
                continue
            source, target = line.split("\t", 1)
            memory.setdefault(normalize_whitespace(source), target.strip())
    return memory


class TranslationEngine(Protocol):
    """Protocol for translation engine implementations."""

    name: str

    @property
    def cache_id(self) -> str:
        """Identity of the engine and its data, used to key the cache."""
        ...

    def translate(self, line: str, index: int) -> str:
        """Translate one non-empty line; ``index`` is used in error reports."""
        ...

    def close(self) -> None: ...


class GlossEngine:
    """Deterministic dictionary substitution engine."""

    name = "gloss"

    def __init__(self, lexicon: Lexicon):
        self.lexicon = lexicon

    @property
    def cache_id(self) -> str:
        return f"gloss-{self.lexicon.fingerprint()[:16]}"

    def translate(self, line: str, index: int) -> str:
        return gloss_translate(line, self.lexicon)

    def close(self) -> None:
        pass


class MemoryEngine(LoggerMixin):
    """Exact-match translation memory with an optional gloss fallback for misses."""

    name = "memory"

    def __init__(self, memory: Dict[str, str], fallback: Optional[GlossEngine] = None):
        self.memory = memory
        self.fallback = fallback
        self.misses = 0

    @classmethod
    def from_file(cls, path: Path, fallback: Optional[GlossEngine] = None) -> "MemoryEngine":
        return cls(load_translation_memory(path), fallback)

    @property
    def cache_id(self) -> str:
        digest = hashlib.sha256()
        for source in sorted(self.memory):
            digest.update(f"{source}\t{self.memory[source]}\n".encode("utf-8"))
        fallback = self.fallback.cache_id if self.fallback else "passthrough"
        return f"memory-{digest.hexdigest()[:16]}-{fallback}"

    def translate(self, line: str, index: int) -> str:
        hit = self.memory.get(normalize_whitespace(line))
        if hit is not None:
            return hit
        self.misses += 1
        if self.fallback is not None:
            return self.fallback.translate(line, index)
        return line

    def close(self) -> None:
        if self.misses:
            self.logger.debug("Translation memory misses", misses=self.misses)


class ExternalCommandEngine(LoggerMixin):
    """
    Line-per-line bridge to a user-supplied translation program.

    The program is started once and must answer every line written to its
    standard input with exactly one line on its standard output, within
    ``timeout`` seconds. Programs that buffer their output never answer in
    time and are stopped.
    """

    name = "external"

    def __init__(self, command: Union[str, Sequence[str]], timeout: float = 60.0):
        self.command: List[str] = (
            shlex.split(command) if isinstance(command, str) else list(command)
        )
        if not self.command:
            raise ValueError("External engine command is empty")
        if timeout <= 0:
            raise ValueError("External engine timeout must be positive")
        self.timeout = timeout
        self._process: Optional[subprocess.Popen] = None
        self._answers: "queue.Queue[str]" = queue.Queue()

    @property
    def cache_id(self) -> str:
        digest = hashlib.sha256("\0".join(self.command).encode("utf-8")).hexdigest()
        return f"external-{digest[:16]}"

    @staticmethod
    def _pump(stream: TextIO, answers: "queue.Queue[str]") -> None:
        for answer in stream:
            answers.put(answer)
        answers.put("")

    def _ensure_started(self, index: int) -> subprocess.Popen:
        if self._process is None:
            try:
                self._process = subprocess.Popen(
                    self.command,
                    stdin=subprocess.PIPE,
                    stdout=subprocess.PIPE,
                    text=True,
                    encoding="utf-8",
                    bufsize=1,
                )
            except OSError as e:
                raise TranslationEngineError(self.name, index, f"cannot start process: {e}")
            self._answers = queue.Queue()
            threading.Thread(
                target=self._pump, args=(self._process.stdout, self._answers), daemon=True
            ).start()
            self.logger.info("Started external translation engine", command=self.command)
        return self._process

    def translate(self, line: str, index: int) -> str:
        process = self._ensure_started(index)
        try:
            process.stdin.write(normalize_whitespace(line) + "\n")
            process.stdin.flush()
        except (BrokenPipeError, OSError) as e:
            raise TranslationEngineError(self.name, index, f"process pipe failed: {e}")
        try:
            answer = self._answers.get(timeout=self.timeout)
        except queue.Empty:
            self._stop(kill=True)
            raise TranslationEngineError(
                self.name, index, f"no answer within {self.timeout:g}s"
            )
        if not answer:
            code = process.poll()
            raise TranslationEngineError(
                self.name, index, f"process ended without output (exit code {code})"
            )
        return answer.rstrip("\r\n")

    def _stop(self, kill: bool = False) -> None:
        if self._process is None:
            return
        process, self._process = self._process, None
        try:
            process.stdin.close()
        except OSError:
            pass
        if kill:
            process.kill()
        try:
            process.wait(timeout=10)
        except subprocess.TimeoutExpired:
            process.kill()
            process.wait()

    def close(self) -> None:
        self._stop()
