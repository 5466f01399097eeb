#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
계층적 추상화 트리

기본 문자 클래스 격자:
- 레벨 0: 리터럴 문자
- 레벨 1: [0-9], [a-z], [A-Z], 한자 클래스, \\s, 그 밖의 문자는 자기 자신만의 단일 클래스
- 레벨 2: 단어 클래스 [0-9A-Za-z_] (숫자/영문 클래스와 밑줄의 부모)
- 레벨 3: 임의 문자 "." (최상위, 자기 자신이 부모)
"""

from functools import lru_cache

from core.models import AbstractionTree, LatticeNode

CATEGORY_LOWER = 0
CATEGORY_UPPER = 1
CATEGORY_DIGIT = 2
CATEGORY_CJK = 3
CATEGORY_SPACE = 4
CATEGORY_OTHER = 5

LEVEL_LITERAL = 0
LEVEL_CLASS = 1
LEVEL_WORD = 2
LEVEL_TOP = 3

# 대괄호 안팎에서 의미가 있는 메타 문자
METACHARACTERS = frozenset(".^$*+?()[]{}|\\/-")


def escape_literal(text: str) -> str:
    """
    정규식 메타 문자 앞에 역슬래시를 붙입니다.

    Args:
        text: 원본 문자열

    Returns:
        이스케이프된 문자열 (예: "a.b" -> "a\\.b")
    """
    return "".join(f"\\{ch}" if ch in METACHARACTERS else ch for ch in text)


def char_category(ch: str) -> int:
    if "a" <= ch <= "z":
        return CATEGORY_LOWER
    if "A" <= ch <= "Z":
        return CATEGORY_UPPER
    if "0" <= ch <= "9":
        return CATEGORY_DIGIT
    if "\u4e00" <= ch <= "\u9fff":
        return CATEGORY_CJK
    if ch.isspace():
        return CATEGORY_SPACE
    return CATEGORY_OTHER


DIGIT = LatticeNode("[0-9]", LEVEL_CLASS, CATEGORY_DIGIT, "0-9", "[0-9]")
LOWER = LatticeNode("[a-z]", LEVEL_CLASS, CATEGORY_LOWER, "a-z", "[a-z]")
UPPER = LatticeNode("[A-Z]", LEVEL_CLASS, CATEGORY_UPPER, "A-Z", "[A-Z]")
CJK = LatticeNode(
    "[\u4e00-\u9fff]", LEVEL_CLASS, CATEGORY_CJK, "\u4e00-\u9fff", "[\u4e00-\u9fff]"
)
SPACE = LatticeNode("\\s", LEVEL_CLASS, CATEGORY_SPACE, "\\s", "\\s")
WORD = LatticeNode(
    "[0-9A-Za-z_]", LEVEL_WORD, CATEGORY_OTHER, "0-9A-Za-z_", "[0-9A-Za-z_]"
)
TOP = LatticeNode(".", LEVEL_TOP, CATEGORY_OTHER, "", ".")


@lru_cache(maxsize=4096)
def literal_node(ch: str) -> LatticeNode:
    """레벨 0 리터럴 노드"""
    escaped = escape_literal(ch)
    return LatticeNode(ch, LEVEL_LITERAL, char_category(ch), escaped, escaped)


@lru_cache(maxsize=4096)
def singleton_node(ch: str) -> LatticeNode:
    """기타 문자의 레벨 1 단일 클래스 노드"""
    escaped = escape_literal(ch)
    return LatticeNode(f"{{{ch}}}", LEVEL_CLASS, CATEGORY_OTHER, escaped, escaped)


def classify(ch: str) -> LatticeNode:
    """리터럴 문자의 레벨 1 부모"""
    category = char_category(ch)
    if category == CATEGORY_DIGIT:
        return DIGIT
    if category == CATEGORY_LOWER:
        return LOWER
    if category == CATEGORY_UPPER:
        return UPPER
    if category == CATEGORY_CJK:
        return CJK
    if category == CATEGORY_SPACE:
        return SPACE
    return singleton_node(ch)


def build_default_tree() -> AbstractionTree:
    """기본 추상화 트리를 만듭니다."""
    return AbstractionTree(
        top=TOP,
        classify=classify,
        leaf=literal_node,
        parents={
            DIGIT.name: WORD,
            LOWER.name: WORD,
            UPPER.name: WORD,
            singleton_node("_").name: WORD,
            WORD.name: TOP,
        },
    )


DEFAULT_TREE = build_default_tree()
