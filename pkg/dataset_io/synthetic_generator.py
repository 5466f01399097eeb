#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
합성 코퍼스 생성 모듈

정상 패턴과 드문 이상치 패턴을 섞어 재현 가능한 잡음 코퍼스를 만듭니다.
각 예제에는 정상/이상치 정답 표시가 붙어 필터 정확도 측정에 쓰입니다.

패턴 표기:
- d, x, X, z: 임의의 숫자 / 영문 소문자 / 영문 대문자 / 한자 한 글자
- 위 기호 뒤의 {n} 또는 {m,n}: 반복 횟수
- \\: 다음 문자를 리터럴로 취급
- 그 밖의 문자: 리터럴
"""

import logging
import string
from dataclasses import dataclass, field
from typing import Any, Dict, List, Sequence, Tuple

import numpy as np
import yaml

from core.exceptions import InvalidSpec
from core.models import NEGATIVE, POSITIVE, Example

logger = logging.getLogger(__name__)

CLASS_ALPHABETS = {
    "d": string.digits,
    "x": string.ascii_lowercase,
    "X": string.ascii_uppercase,
    "z": "".join(chr(code) for code in range(0x4E00, 0x4E00 + 500)),
}

PATTERN_LIBRARY = {
    "phone": "(0d{2})d{8}",
    "sms": "SMS_d{6}",
    "email": "x{3,8}@x{3,6}.com",
    "date": "d{4}-d{2}-d{2}",
    "url": "http://www.x{3,10}.com/x{2,8}",
    "course": "X{2,4} d{3}",
    "software": "Xx{3,8} d{1,2}.d",
}

# 서로 다른 MetaParam을 가지는 드문 이상치 패턴
DEFAULT_OUTLIER_PATTERNS = (
    "#d{2}!",
    "z{2}?d",
    "X-X-X",
    "d.x{2}",
    "~x{1,3}~",
    "x{2}&X{2}",
    "@@d{3}",
    "z{1,2}d{2}z",
    "$d{1,4}%",
    "X{3}=x{2}=",
    "d{2}:d{2}:X",
    "^x^d^",
)


@dataclass(frozen=True)
class PatternToken:
    """패턴 표기의 토큰 (문자 클래스 반복 또는 리터럴)"""

    symbol: str
    literal: bool
    low: int = 1
    high: int = 1


def _parse_count(expr: str, start: int) -> Tuple[int, int, int]:
    """expr[start]가 '{'일 때 반복 범위와 다음 위치를 읽습니다."""
    end = expr.find("}", start)
    if end < 0:
        raise InvalidSpec(f"닫히지 않은 반복 표기: {expr!r}")
    body = expr[start + 1:end]
    try:
        if "," in body:
            low_text, high_text = body.split(",", 1)
            low, high = int(low_text), int(high_text)
        else:
            low = high = int(body)
    except ValueError as e:
        raise InvalidSpec(f"잘못된 반복 표기 {{{body}}}: {expr!r}") from e
    if low < 1 or high < low:
        raise InvalidSpec(f"반복 범위는 1 이상이어야 합니다 {{{body}}}: {expr!r}")
    return low, high, end + 1


def parse_pattern(expr: str) -> List[PatternToken]:
    """
    패턴 표기를 토큰 목록으로 변환합니다.

    Args:
        expr: 패턴 표기 (예: "SMS_d{6}")

    Returns:
        PatternToken 목록
    """
    tokens = []
    i = 0
    while i < len(expr):
        ch = expr[i]
        if ch == "\\":
            if i + 1 >= len(expr):
                raise InvalidSpec(f"패턴 끝의 역슬래시: {expr!r}")
            tokens.append(PatternToken(expr[i + 1], literal=True))
            i += 2
        elif ch in CLASS_ALPHABETS:
            low = high = 1
            i += 1
            if i < len(expr) and expr[i] == "{":
                low, high, i = _parse_count(expr, i)
            tokens.append(PatternToken(ch, literal=False, low=low, high=high))
        else:
            tokens.append(PatternToken(ch, literal=True))
            i += 1
    if not tokens:
        raise InvalidSpec("빈 패턴")
    return tokens


def resolve_pattern(name_or_expr: str) -> List[PatternToken]:
    """라이브러리 이름이면 해당 패턴을, 아니면 표기 자체를 파싱합니다."""
    return parse_pattern(PATTERN_LIBRARY.get(name_or_expr, name_or_expr))


def render_pattern(tokens: Sequence[PatternToken], rng: np.random.Generator) -> str:
    """토큰 목록에서 문자열 하나를 무작위로 생성합니다."""
    parts = []
    for token in tokens:
        if token.literal:
            parts.append(token.symbol)
            continue
        alphabet = CLASS_ALPHABETS[token.symbol]
        count = int(rng.integers(token.low, token.high + 1))
        parts.extend(alphabet[int(index)] for index in rng.integers(0, len(alphabet), size=count))
    return "".join(parts)


@dataclass(frozen=True)
class SyntheticSpec:
    """합성 코퍼스 설정"""

    inlier_patterns: Tuple[str, ...]
    inlier_count: int
    outlier_patterns: Tuple[str, ...] = field(default=DEFAULT_OUTLIER_PATTERNS)
    outlier_fraction: float = 0.0
    seed: int = 0

    @property
    def outlier_count(self) -> int:
        return int(round(self.inlier_count * self.outlier_fraction))

    def validate(self) -> None:
        if not self.inlier_patterns:
            raise InvalidSpec("정상 패턴이 하나 이상 필요합니다")
        if self.inlier_count < 0:
            raise InvalidSpec(f"정상 예제 수는 0 이상이어야 합니다: {self.inlier_count}")
        if not 0.0 <= self.outlier_fraction < 0.5:
            raise InvalidSpec(f"이상치 비율은 [0, 0.5) 범위여야 합니다: {self.outlier_fraction}")
        if self.outlier_count and not self.outlier_patterns:
            raise InvalidSpec("이상치 비율이 0보다 크면 이상치 패턴이 필요합니다")


def generate_synthetic(spec: SyntheticSpec) -> List[Example]:
    """
    설정에 따라 재현 가능한 합성 코퍼스를 생성합니다.

    Args:
        spec: 합성 코퍼스 설정 (seed가 모든 무작위성을 결정)

    Returns:
        섞인 예제 목록 (정상: positive/outlier=False, 이상치: negative/outlier=True)
    """
    spec.validate()
    rng = np.random.default_rng(spec.seed)
    inlier_tokens = [resolve_pattern(name) for name in spec.inlier_patterns]
    outlier_tokens = [resolve_pattern(name) for name in spec.outlier_patterns]

    generated = []
    for _ in range(spec.inlier_count):
        tokens = inlier_tokens[int(rng.integers(len(inlier_tokens)))]
        generated.append((render_pattern(tokens, rng), False))
    for _ in range(spec.outlier_count):
        tokens = outlier_tokens[int(rng.integers(len(outlier_tokens)))]
        generated.append((render_pattern(tokens, rng), True))

    order = rng.permutation(len(generated))
    examples = []
    for position, index in enumerate(order):
        raw, is_outlier = generated[int(index)]
        examples.append(
            Example(
                raw=raw,
                label=NEGATIVE if is_outlier else POSITIVE,
                outlier=is_outlier,
                doc_id=f"syn-{position:06d}",
            )
        )
    logger.info(f"합성 코퍼스 생성: 정상 {spec.inlier_count}개, 이상치 {spec.outlier_count}개 (seed={spec.seed})")
    return examples


def spec_from_dict(data: Dict[str, Any]) -> SyntheticSpec:
    """딕셔너리(YAML 내용)에서 SyntheticSpec을 만듭니다."""
    if not isinstance(data, dict):
        raise InvalidSpec("합성 코퍼스 설정은 매핑이어야 합니다")
    unknown = set(data) - {"inlier_patterns", "inlier_count", "outlier_patterns", "outlier_fraction", "seed"}
    if unknown:
        raise InvalidSpec(f"알 수 없는 설정 항목: {sorted(unknown)}")
    try:
        spec = SyntheticSpec(
            inlier_patterns=tuple(data["inlier_patterns"]),
            inlier_count=int(data["inlier_count"]),
            outlier_patterns=tuple(data.get("outlier_patterns") or DEFAULT_OUTLIER_PATTERNS),
            outlier_fraction=float(data.get("outlier_fraction", 0.0)),
            seed=int(data.get("seed", 0)),
        )
    except (KeyError, TypeError, ValueError) as e:
        raise InvalidSpec(f"합성 코퍼스 설정 오류: {e}") from e
    spec.validate()
    return spec


def load_synthetic_spec(path: str) -> SyntheticSpec:
    """YAML 파일에서 합성 코퍼스 설정을 읽습니다."""
    try:
        with open(path, "r", encoding="utf-8") as file:
            data = yaml.safe_load(file)
    except yaml.YAMLError as e:
        logger.error(f"합성 코퍼스 설정 파일 파싱 실패: {path}: {e}")
        raise InvalidSpec(f"YAML 파싱 실패: {e}") from e
    return spec_from_dict(data)
