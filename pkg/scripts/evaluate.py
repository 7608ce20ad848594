#!/usr/bin/env python3
"""
Script para avaliar as propriedades do twistprod em lote.

Uso: python scripts/evaluate.py [quick|full]
"""

import sys
from pathlib import Path

# Adicionar raiz do projeto ao path
sys.path.append(str(Path(__file__).parent.parent))

from src.evaluation import PropertyEvaluator
from src.utils.config import setup_logging


def main():
    """Função principal."""
    setup_logging("INFO")
    print("🔍 twistprod - Avaliação de propriedades")
    print("=" * 40)

    evaluation_type = "full" if len(sys.argv) > 1 and sys.argv[1] == "full" else "quick"
    print(f"Executando avaliação: {evaluation_type}")

    try:
        evaluator = PropertyEvaluator()
        results = evaluator.run(evaluation_type)

        if not results.get("success", False):
            print(f"\n❌ Erro na avaliação: {results.get('error', 'Erro desconhecido')}")
            sys.exit(1)

        summary = results["summary"]
        print("\n📊 Resultados:")
        print(f"  - Verificações: {summary['total_checks']}")
        print(f"  - Aprovadas: {summary['passed_checks']}")
        print(f"  - Taxa de aprovação: {summary['pass_rate']:.3f}")

        print("\n📈 Varreduras:")
        for sweep, stats in summary["by_sweep"].items():
            print(f"  - {sweep}: {stats['passed']}/{stats['checks']} em {stats['seconds']:.2f}s")

        print(f"\n📁 Resultados salvos em: {evaluator.results_dir}")

        if summary["failed_checks"]:
            print(f"\n❌ {summary['failed_checks']} verificação(ões) falharam")
            sys.exit(1)
        print("\n✅ Avaliação concluída sem falhas!")

    except KeyboardInterrupt:
        print("\n⏹️ Avaliação interrompida pelo usuário")
        sys.exit(0)
    except Exception as e:
        print(f"\n❌ Erro inesperado: {str(e)}")
        sys.exit(1)


if __name__ == "__main__":
    main()
