"""
End-to-end system test for the Latin Square Balance Toolkit
"""
import asyncio
import logging
import sys
import os
from dotenv import load_dotenv
import unittest

# Add parent directory to path for imports
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

# Load environment variables
load_dotenv()

# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    handlers=[logging.StreamHandler(sys.stdout)]
)
logger = logging.getLogger(__name__)


class SystemTester:
    def __init__(self):
        self.results = {}

    async def test_environment(self):
        """Test environment configuration"""
        logger.info("🔧 Testing Environment Configuration")
        try:
            from config.settings import DEFAULT_THREADS, LOG_LEVEL, TABLE_BUDGET_SECONDS
            logger.info(f"   threads={DEFAULT_THREADS} log_level={LOG_LEVEL} table_budget={TABLE_BUDGET_SECONDS:.0f}s")
            self.results['environment'] = DEFAULT_THREADS >= 1 and TABLE_BUDGET_SECONDS > 0
        except Exception as e:
            logger.error(f"❌ Settings failed to load: {e}")
            self.results['environment'] = False
        return self.results['environment']

    async def test_imbalance(self):
        """Exhaustive minimum over all order-4 squares meets the bound exactly"""
        logger.info("📐 Testing Imbalance")
        try:
            from enumeration.latin import min_imbalance_exhaustive
            from core.bounds import lower_bound3
            value, witness = await asyncio.to_thread(min_imbalance_exhaustive, 4)
            logger.info(f"   min imbalance3 for n=4 is {value}, witness rows {witness.cells}")
            self.results['imbalance'] = value == lower_bound3(4) == 16
        except Exception as e:
            logger.error(f"❌ Imbalance check failed: {e}")
            self.results['imbalance'] = False
        return self.results['imbalance']

    async def test_enumeration(self):
        """Perfect permutations exist at 3 and 5 and never at 4 or 7"""
        logger.info("🔍 Testing Enumeration")
        try:
            from enumeration.perfect import enumerate_perfect
            from enumeration.tasks import EnumerationMode, EnumerationTask
            counts = {}
            for n in (3, 4, 5, 7):
                task = EnumerationTask(n=n, mode=EnumerationMode.PERFECT_PERMUTATIONS, thread_count=1)
                result = await asyncio.to_thread(enumerate_perfect, task)
                counts[n] = result.total_count
            logger.info(f"   perfect permutation counts: {counts}")
            self.results['enumeration'] = counts[3] == 6 and counts[5] > 0 and counts[4] == counts[7] == 0
        except Exception as e:
            logger.error(f"❌ Enumeration failed: {e}")
            self.results['enumeration'] = False
        return self.results['enumeration']

    async def test_search(self):
        """Anneal a near-PP of order 13 and verify the certificate independently"""
        logger.info("🔥 Testing Search")
        try:
            from anneal.annealer import search
            from anneal.certificate import NearPPCertificate
            from anneal.config import AnnealConfig
            from certify.verifier import verify_near_pp
            outcome = await asyncio.to_thread(search, AnnealConfig(n=13, seed=1, time_limit=60))
            if isinstance(outcome, NearPPCertificate):
                report = verify_near_pp(outcome)
                logger.info(f"   sigma={outcome.sigma} imbalance3={outcome.imbalance3} verified={report.passed}")
                self.results['search'] = report.passed
            else:
                logger.warning(f"⚠️ Search gave up: {outcome.reason}")
                self.results['search'] = False
        except Exception as e:
            logger.error(f"❌ Search failed: {e}")
            self.results['search'] = False
        return self.results['search']

    async def test_table(self):
        """Reproduce the first table rows"""
        logger.info("📊 Testing Table Reproduction")
        try:
            from certify.table import reproduce_table
            manifest = await asyncio.to_thread(reproduce_table, 10, 60)
            for row in manifest.rows:
                logger.info(f"   n={row.n}: I*={row.i_star} ({row.seconds:.2f}s) {row.status}")
            self.results['table'] = manifest.all_ok and [r.i_star for r in manifest.rows] == ['16/3', '56/3', '40']
        except Exception as e:
            logger.error(f"❌ Table reproduction failed: {e}")
            self.results['table'] = False
        return self.results['table']

    async def test_falsification(self):
        """Random and descended squares never go below the bound"""
        logger.info("🧪 Testing Bound Falsification")
        try:
            from certify.falsify import falsify_bound
            from core.sampling import make_rng
            result = await asyncio.to_thread(falsify_bound, 7, 50, make_rng(0))
            logger.info(f"   min imbalance3 {result.min_imbalance3} against bound {result.lower_bound3}")
            self.results['falsification'] = not result.violations
        except Exception as e:
            logger.error(f"❌ Falsification run failed: {e}")
            self.results['falsification'] = False
        return self.results['falsification']

    async def run_all_tests(self):
        """Run all system tests"""
        logger.info("🧪 Starting Latin Square Balance Toolkit System Tests")
        logger.info("=" * 60)

        await self.test_environment()
        await self.test_imbalance()
        await self.test_enumeration()
        await self.test_search()
        await self.test_table()
        await self.test_falsification()

        # Print summary
        logger.info("\n" + "=" * 60)
        logger.info("SYSTEM TEST RESULTS")
        logger.info("=" * 60)

        test_names = {
            'environment': '🔧 Environment Configuration',
            'imbalance': '📐 Imbalance',
            'enumeration': '🔍 Enumeration',
            'search': '🔥 Search',
            'table': '📊 Table Reproduction',
            'falsification': '🧪 Bound Falsification',
        }

        passed = 0
        total = len(self.results)
        for test_key, test_name in test_names.items():
            status = "✅ PASS" if self.results.get(test_key, False) else "❌ FAIL"
            logger.info(f"{test_name}: {status}")
            if self.results.get(test_key, False):
                passed += 1

        logger.info(f"\nOverall: {passed}/{total} tests passed")
        if passed == total:
            logger.info("🎉 ALL TESTS PASSED!")
        else:
            logger.error("❌ Some checks failed, see the log above.")

        return passed, total


class TestLatinBalanceSystem(unittest.TestCase):
    """End-to-end run of every subsystem"""

    def test_system(self):
        """Run the system test"""
        tester = SystemTester()
        passed, total = asyncio.run(tester.run_all_tests())
        self.assertEqual(passed, total)


async def main():
    """Main test function"""
    tester = SystemTester()
    await tester.run_all_tests()

if __name__ == "__main__":
    asyncio.run(main())
