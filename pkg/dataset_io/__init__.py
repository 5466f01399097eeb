"""
데이터셋 입출력 패키지

이 패키지는 코퍼스와 평가 데이터를 읽고 쓰는 모듈을 포함합니다:
- 한 줄에 예제 하나인 코퍼스, 줄 단위 JSON 주석 데이터셋
- 재현 가능한 합성 잡음 코퍼스 생성
- 정규식 아티팩트, 진단 정보, 평가 리포트 파일
"""
