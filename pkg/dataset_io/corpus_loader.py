#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
코퍼스 로더 모듈

이 모듈은 다음 형식을 읽고 씁니다:
- 코퍼스: UTF-8 텍스트, 한 줄에 예제 하나 (빈 줄은 오류)
- 주석 데이터셋: 한 줄에 JSON 레코드 하나
  필드: context_left, span, context_right, label(pos/neg), 선택 필드 id, outlier
"""

import json
import logging
import os
from typing import Any, Dict, List, Sequence

from core.exceptions import EmptyLine, EncodingError, InvalidExample, SchemaError
from core.models import NEGATIVE, POSITIVE, Example

logger = logging.getLogger(__name__)

LABEL_CODES = {"pos": POSITIVE, "neg": NEGATIVE}
LABEL_NAMES = {POSITIVE: "pos", NEGATIVE: "neg"}
TEXT_FIELDS = ("context_left", "span", "context_right")


def read_text(path: str) -> str:
    """파일을 UTF-8로 읽습니다."""
    try:
        with open(path, "rb") as file:
            data = file.read()
    except OSError as e:
        logger.error(f"파일을 읽을 수 없습니다: {path}: {e}")
        raise
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        logger.error(f"UTF-8 디코딩 실패: {path}: {e}")
        raise EncodingError(f"UTF-8이 아닌 파일입니다: {path} ({e})") from e


def split_lines(text: str) -> List[str]:
    """마지막 줄바꿈을 제외하고 줄 단위로 나눕니다 (CRLF 허용)."""
    if not text:
        return []
    lines = text.split("\n")
    if lines[-1] == "":
        lines.pop()
    return [line[:-1] if line.endswith("\r") else line for line in lines]


def _ensure_parent(path: str) -> None:
    directory = os.path.dirname(path)
    if directory and not os.path.exists(directory):
        os.makedirs(directory)


def load_corpus(path: str) -> List[Example]:
    """
    코퍼스 파일을 읽습니다.

    Args:
        path: 코퍼스 파일 경로

    Returns:
        예제 목록
    """
    examples = []
    for line_no, line in enumerate(split_lines(read_text(path)), start=1):
        if not line:
            raise EmptyLine(line_no)
        examples.append(Example(raw=line))
    logger.info(f"코퍼스 로드 완료: {path} ({len(examples)}개 예제)")
    return examples


def save_corpus(path: str, examples: Sequence[Example]) -> None:
    """코퍼스를 한 줄에 예제 하나씩 저장합니다."""
    for example in examples:
        if not example.raw or "\n" in example.raw or example.raw.endswith("\r"):
            raise InvalidExample(f"한 줄로 저장할 수 없는 예제입니다: {example.raw!r}")
    _ensure_parent(path)
    with open(path, "w", encoding="utf-8", newline="") as file:
        for example in examples:
            file.write(example.raw + "\n")


def parse_annotated_record(line_no: int, line: str) -> Example:
    """주석 레코드 한 줄을 Example로 변환합니다."""
    try:
        record = json.loads(line)
    except json.JSONDecodeError as e:
        raise SchemaError(line_no, "record", str(e)) from e
    if not isinstance(record, dict):
        raise SchemaError(line_no, "record", "JSON 객체가 아닙니다")

    for field in TEXT_FIELDS:
        if field not in record:
            raise SchemaError(line_no, field, "필드 누락")
        if not isinstance(record[field], str):
            raise SchemaError(line_no, field, "문자열이 아닙니다")

    label = record.get("label")
    if label not in LABEL_CODES:
        raise SchemaError(line_no, "label", f"pos/neg 중 하나여야 합니다: {label!r}")

    outlier = record.get("outlier")
    if outlier is not None and not isinstance(outlier, bool):
        raise SchemaError(line_no, "outlier", "불리언이 아닙니다")

    doc_id = record.get("id")
    if doc_id is not None and not isinstance(doc_id, str):
        raise SchemaError(line_no, "id", "문자열이 아닙니다")

    return Example(
        raw=record["span"],
        label=LABEL_CODES[label],
        span=record["span"],
        context_left=record["context_left"],
        context_right=record["context_right"],
        outlier=outlier,
        doc_id=doc_id,
    )


def load_annotated(path: str) -> List[Example]:
    """
    주석 데이터셋을 읽습니다.

    Args:
        path: 줄 단위 JSON 파일 경로

    Returns:
        스팬과 문맥이 채워진 예제 목록
    """
    examples = []
    for line_no, line in enumerate(split_lines(read_text(path)), start=1):
        if not line.strip():
            raise SchemaError(line_no, "record", "빈 줄")
        examples.append(parse_annotated_record(line_no, line))
    logger.info(f"주석 데이터셋 로드 완료: {path} ({len(examples)}개 문서)")
    return examples


def annotated_record(example: Example) -> Dict[str, Any]:
    """Example을 주석 레코드 딕셔너리로 변환합니다."""
    if example.label not in LABEL_NAMES:
        raise InvalidExample(f"레이블이 없는 예제는 주석 레코드로 저장할 수 없습니다: {example.raw!r}")
    record: Dict[str, Any] = {}
    if example.doc_id is not None:
        record["id"] = example.doc_id
    record["context_left"] = example.context_left or ""
    record["span"] = example.span if example.span is not None else example.raw
    record["context_right"] = example.context_right or ""
    record["label"] = LABEL_NAMES[example.label]
    if example.outlier is not None:
        record["outlier"] = example.outlier
    return record


def save_annotated(path: str, examples: Sequence[Example]) -> None:
    """주석 데이터셋을 줄 단위 JSON으로 저장합니다."""
    _ensure_parent(path)
    with open(path, "w", encoding="utf-8", newline="") as file:
        for example in examples:
            file.write(json.dumps(annotated_record(example), ensure_ascii=False) + "\n")
