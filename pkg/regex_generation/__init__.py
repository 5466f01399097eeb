"""
정규식 생성 패키지

이 패키지는 정상 클러스터마다 정규식을 생성합니다:
- LCS 앵커와 슬롯으로 이루어진 템플릿 생성
- 계층적 추상화 트리를 이용한 슬롯 생성
- 클러스터링부터 아티팩트까지 전체 파이프라인 관리
"""
