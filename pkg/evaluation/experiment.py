#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
학습 크기별 실험 모듈

주석 데이터셋에서 학습 크기마다 다음을 반복합니다:
- 양성 문서 n개를 학습 집합으로 뽑아 그 스팬으로 정규식 생성
- 남은 문서에서 round(n * test_ratio)개를 테스트 집합으로 뽑아 평가
- 반복별 결과와 학습 크기별 평균을 표로 정리
"""

import logging
from typing import Any, Dict, List, Optional, Sequence

import numpy as np
import pandas as pd
from sklearn.model_selection import train_test_split

from core.exceptions import InvalidSpec
from core.models import Example
from regex_generation.generator_manager import RegexGenerationManager
from .evaluator import run_extraction, score

logger = logging.getLogger(__name__)

RESULT_COLUMNS = [
    "learning",
    "repeat",
    "test_ratio",
    "testing",
    "clusters",
    "retained",
    "precision",
    "recall",
    "f_measure",
    "noisy_precision",
]
METRIC_COLUMNS = ["testing", "clusters", "retained", "precision", "recall", "f_measure", "noisy_precision"]


def split_learning_testing(docs: Sequence[Example], learning_size: int, test_ratio: float, random_state: int):
    """
    학습 집합과 테스트 집합을 뽑습니다.

    Args:
        docs: 주석 문서 목록
        learning_size: 학습에 쓸 양성 문서 수
        test_ratio: 학습 크기 대비 테스트 문서 비율
        random_state: 분할 시드

    Returns:
        (학습 문서 목록, 테스트 문서 목록), 각각 원래 순서 유지
    """
    positive_idx = [i for i, doc in enumerate(docs) if doc.is_positive]
    if learning_size < 1 or learning_size > len(positive_idx):
        raise InvalidSpec(f"학습 크기 {learning_size}는 1 이상 양성 문서 수({len(positive_idx)}) 이하여야 합니다")

    if learning_size == len(positive_idx):
        learning_idx = list(positive_idx)
    else:
        learning_idx, _ = train_test_split(positive_idx, train_size=learning_size, random_state=random_state)

    chosen = set(learning_idx)
    remaining_idx = [i for i in range(len(docs)) if i not in chosen]
    testing_size = int(round(learning_size * test_ratio))
    if testing_size >= len(remaining_idx):
        testing_idx = remaining_idx
    elif testing_size == 0:
        testing_idx = []
    else:
        _, testing_idx = train_test_split(remaining_idx, test_size=testing_size, random_state=random_state)

    return [docs[i] for i in sorted(learning_idx)], [docs[i] for i in sorted(testing_idx)]


def run_learning_experiment(
    docs: Sequence[Example],
    learning_sizes: Sequence[int],
    test_ratio: float = 0.5,
    seed: int = 42,
    repeats: int = 1,
    generation_config: Optional[Dict[str, Any]] = None,
) -> pd.DataFrame:
    """
    학습 크기별 추출 성능 실험을 실행합니다.

    Args:
        docs: 주석 문서 목록
        learning_sizes: 학습 크기 목록 (예: [25, 50, 100])
        test_ratio: 학습 크기 대비 테스트 문서 비율
        seed: 기준 시드 (반복 r은 seed + r 사용)
        repeats: 학습 크기별 반복 횟수
        generation_config: 정규식 생성 설정

    Returns:
        반복별 행과 학습 크기별 평균 행(repeat="mean")으로 된 DataFrame
    """
    if repeats < 1:
        raise InvalidSpec(f"반복 횟수는 1 이상이어야 합니다: {repeats}")
    if test_ratio < 0:
        raise InvalidSpec(f"테스트 비율은 0 이상이어야 합니다: {test_ratio}")

    manager = RegexGenerationManager(generation_config)
    rows: List[Dict[str, Any]] = []
    for learning_size in learning_sizes:
        size_rows = []
        for repeat in range(repeats):
            learning, testing = split_learning_testing(docs, learning_size, test_ratio, seed + repeat)
            corpus = [Example(raw=doc.span if doc.span is not None else doc.raw) for doc in learning]
            try:
                result = manager.generate(corpus)
            except Exception as e:
                logger.error(f"학습 크기 {learning_size} 반복 {repeat} 정규식 생성 중 오류 발생: {e}")
                raise
            report = score(run_extraction(result.artifacts, testing, workers=manager.workers))
            size_rows.append(
                {
                    "learning": learning_size,
                    "repeat": str(repeat),
                    "test_ratio": test_ratio,
                    "testing": len(testing),
                    "clusters": len(result.table),
                    "retained": len(result.artifacts),
                    "precision": report.precision,
                    "recall": report.recall,
                    "f_measure": report.f_measure,
                    "noisy_precision": report.noisy_precision if report.noisy_precision is not None else np.nan,
                }
            )
            logger.info(
                f"학습 {learning_size} / 테스트 {len(testing)} (반복 {repeat}): "
                f"P={report.precision:.4f} R={report.recall:.4f} F={report.f_measure:.4f}"
            )

        mean_row = {"learning": learning_size, "repeat": "mean", "test_ratio": test_ratio}
        mean_row.update(pd.DataFrame(size_rows)[METRIC_COLUMNS].mean(skipna=True).to_dict())
        rows.extend(size_rows)
        rows.append(mean_row)

    return pd.DataFrame(rows, columns=RESULT_COLUMNS)
