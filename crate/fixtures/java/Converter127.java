import java.util.ArrayList;

public class Converter127 {
	static int largest(int[] nums) {
		int biggest = nums[0];
		for (int idx = 1; idx < nums.length; idx++) {
			if (nums[idx] > biggest) {
				biggest = nums[idx];
			}
		}
		return biggest;
	}

	static ArrayList<Integer> filterEven(int[] nums) {
		ArrayList<Integer> result = new ArrayList<>();
		for (int v : nums) {
			if (v % 2 == 0) {
				result.add(v);
			}
		}
		return result;
	}

	public static void main(String[] args) {
		int[] numbers = {1, 7, 7};
		int top = largest(numbers);
		System.out.println("Max is " + top);
		ArrayList<Integer> even = filterEven(numbers);
		System.out.println(even.size() + " even numbers");
	}
}
