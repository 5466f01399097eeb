"""
공통 도메인 패키지

이 패키지는 모든 모듈이 공유하는 데이터 타입과 예외를 포함합니다:
- 예제, MetaParam, 클러스터 테이블 등 도메인 모델
- 입력 오류와 파이프라인 불변식 위반을 구분하는 예외 계층
"""
