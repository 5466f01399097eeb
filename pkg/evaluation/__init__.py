"""
평가 패키지

생성된 정규식을 주석 데이터셋에 적용하여 추출 성능을 측정합니다:
- 문서별 추출 실행과 정밀도/재현율/F-measure
- 이상치를 고려한 잡음 정밀도
- 학습 크기별 실험
"""
