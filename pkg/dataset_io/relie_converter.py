#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
탭 구분 주석 파일 변환 모듈

label<TAB>context_left<TAB>span<TAB>context_right 형식의 파일을
줄 단위 JSON 주석 데이터셋으로 변환합니다.
"""

import logging
from typing import List

from core.exceptions import SchemaError
from core.models import NEGATIVE, POSITIVE, Example
from .corpus_loader import read_text, save_annotated, split_lines

logger = logging.getLogger(__name__)

TSV_LABELS = {
    "pos": POSITIVE,
    "1": POSITIVE,
    "+": POSITIVE,
    "neg": NEGATIVE,
    "0": NEGATIVE,
    "-": NEGATIVE,
}


def parse_tsv_line(line_no: int, line: str) -> Example:
    """탭 구분 한 줄을 Example로 변환합니다."""
    columns = line.split("\t")
    if len(columns) != 4:
        raise SchemaError(line_no, "record", f"열 수가 4가 아닙니다: {len(columns)}")
    label, left, span, right = columns
    code = label.strip().lower()
    if code not in TSV_LABELS:
        raise SchemaError(line_no, "label", f"알 수 없는 레이블: {label!r}")
    return Example(
        raw=span,
        label=TSV_LABELS[code],
        span=span,
        context_left=left,
        context_right=right,
        doc_id=f"tsv-{line_no}",
    )


def load_relie_tsv(path: str) -> List[Example]:
    """탭 구분 주석 파일을 읽습니다 (빈 줄은 경고 후 건너뜀)."""
    examples = []
    skipped = 0
    for line_no, line in enumerate(split_lines(read_text(path)), start=1):
        if not line.strip():
            skipped += 1
            continue
        examples.append(parse_tsv_line(line_no, line))
    if skipped:
        logger.warning(f"빈 줄 {skipped}개를 건너뛰었습니다: {path}")
    return examples


def convert_relie_tsv(src: str, dst: str) -> List[Example]:
    """
    탭 구분 주석 파일을 JSON 주석 데이터셋으로 변환합니다.

    Args:
        src: 원본 탭 구분 파일 경로
        dst: 출력 줄 단위 JSON 파일 경로

    Returns:
        변환된 예제 목록
    """
    examples = load_relie_tsv(src)
    save_annotated(dst, examples)
    logger.info(f"변환 완료: {src} -> {dst} ({len(examples)}개 문서)")
    return examples
