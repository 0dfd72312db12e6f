// Lab assignment
import java.util.ArrayList;
import java.util.Random;

/**
 * Game157 program.
 */
public class Game157 {
	static class Point {
		int x;
		int y;
		Point(int x, int y) {
			this.x = x;
			this.y = y;
		}
		double distance() {
			return Math.sqrt(x * x + y * y);
		}
	}

	public static boolean isPalindrome(String word) {
		int left = 0;
		int right = word.length() - 1;
		while (left < right) {
			if (word.charAt(left) != word.charAt(right)) {
				return false;
			}
			left++;
			right--;
		}
		return true;
	}

	static ArrayList<Integer> evens(int[] nums) {
		ArrayList<Integer> result = new ArrayList<>();
		for (int v : nums) {
			if (v % 2 == 0) {
				result.add(v);
			}
		}
		return result;
	}

	public static int digitSum(int x) {
		int acc = 0;
		while (x > 0) {
			acc += x % 10;
			x /= 10;
		}
		return acc;
	}

	static char toLetter(int mark) {
		if (mark >= 90) {
			return 'A';
		} else if (mark >= 80) {
			return 'B';
		} else if (mark >= 70) {
			return 'C';
		} else {
			return 'F';
		}
	}

	static int findMax(int[] nums) {
		int max = nums[0];
		for (int idx = 1; idx < nums.length; idx++) {
			if (nums[idx] > max) {
				max = nums[idx];
			}
		}
		return max;
	}

	static int[] randomFill(int size) {
		Random rand = new Random(42);
		int[] nums = new int[size];
		for (int idx = 0; idx < size; idx++) {
			nums[idx] = rand.nextInt(100);
		}
		return nums;
	}

	public static int indexOf(int[] nums, int target) {
		for (int idx = 0; idx < nums.length; idx++) {
			if (nums[idx] == target) {
				return idx;
			}
		}
		return -1;
	}

	static int gcd(int a, int b) {
		while (b != 0) {
			int t = b;
			b = a % b;
			a = t;
		}
		return a;
	}

	public static void main(String[] args) {
		int[] numbers = {8, 5, 1, 4, 4, 6};
		Point p = new Point(2, 8);
		System.out.println(p.distance());
		System.out.println(isPalindrome("racecar"));
		ArrayList<Integer> even = evens(numbers);
		System.out.println(even.size() + " even numbers");
		System.out.println("Digits: " + digitSum(21190));
		System.out.println("Grade: " + toLetter(69));
		int top = findMax(numbers);
		System.out.println("Max is " + top);
		int[] random = randomFill(4);
		System.out.println(random.length);
		int pos = indexOf(numbers, 1);
		System.out.println("Found at " + pos);
		System.out.println("GCD: " + gcd(26, 44));
	}
}
