#!/usr/bin/env python3
"""
Script para gerar os arquivos dourados dos exemplos embutidos.

Uso: python scripts/generate_golden.py [diretório]
"""

import sys
from pathlib import Path

# Adicionar raiz do projeto ao path
sys.path.append(str(Path(__file__).parent.parent))

from src.corpus import BUILTIN_NAMES, builtin, write_golden
from src.utils.config import get_settings, setup_logging


def main():
    """Função principal."""
    setup_logging("INFO")
    directory = Path(sys.argv[1]) if len(sys.argv) > 1 else get_settings().golden_dir
    print("🚀 twistprod - Geração dos arquivos dourados")
    print("=" * 40)

    try:
        for name in BUILTIN_NAMES:
            path = write_golden(builtin(name), directory)
            print(f"  ✅ {name}: {path}")
        print(f"\n📁 {len(BUILTIN_NAMES)} arquivos gravados em: {directory}")
    except Exception as e:
        print(f"\n❌ Erro ao gerar arquivos dourados: {str(e)}")
        sys.exit(1)


if __name__ == "__main__":
    main()
