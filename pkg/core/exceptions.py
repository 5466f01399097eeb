#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
예외 정의 모듈

모든 예외는 RegexLearnerError를 상속하며 두 계열로 나뉩니다:
- DataError: 잘못된 입력 데이터 (CLI 종료 코드 2)
- InvariantViolation: 파이프라인 내부 불변식 위반 (CLI 종료 코드 3)
"""

from typing import Optional


class RegexLearnerError(Exception):
    """정규식 학습기의 최상위 예외"""


class DataError(RegexLearnerError):
    """입력 데이터가 올바르지 않을 때 발생하는 예외"""


class InvariantViolation(RegexLearnerError):
    """파이프라인 내부 불변식이 깨졌을 때 발생하는 예외 (버그 신호)"""


class InvalidExample(DataError):
    """MetaParam을 만들 수 없는 예제 (빈 문자열 등)"""


class EmptyTable(DataError):
    """클러스터 테이블이 비어 있음"""


class EmptyCdf(DataError):
    """누적 분포가 비어 있음"""


class OverrideOutOfRange(DataError):
    """수동 knee 순위가 클러스터 개수 범위를 벗어남"""


class EmptyCluster(DataError):
    """템플릿을 만들 클러스터 멤버가 없음"""


class EncodingError(DataError):
    """UTF-8로 디코딩할 수 없는 파일"""


class InvalidSpec(DataError):
    """합성 코퍼스 또는 실험 설정이 올바르지 않음"""


class ArtifactLoadError(DataError):
    """정규식 아티팩트 파일을 읽거나 컴파일할 수 없음"""


class EmptyLine(DataError):
    """코퍼스 파일에 빈 줄이 있음"""

    def __init__(self, line_no: int):
        self.line_no = line_no
        super().__init__(f"{line_no}번째 줄이 비어 있습니다")


class SchemaError(DataError):
    """주석 데이터셋 레코드의 스키마 오류"""

    def __init__(self, line_no: int, field: str, detail: Optional[str] = None):
        self.line_no = line_no
        self.field = field
        message = f"{line_no}번째 레코드의 '{field}' 필드 오류"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)


class DivisionByZero(DataError, ZeroDivisionError):
    """정상 예제 수가 0이라 잡음 정밀도를 계산할 수 없음"""


class AlignmentFailure(InvariantViolation):
    """멤버 문자열을 템플릿 앵커에 정렬할 수 없음"""


class CompileFailure(InvariantViolation):
    """생성된 정규식이 컴파일되지 않음"""


class SoundnessViolation(InvariantViolation):
    """생성된 정규식이 학습 멤버를 완전 일치하지 못함"""
